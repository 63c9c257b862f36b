"""Allow ``python -m collabsim``."""
from collabsim.cli import run

if __name__ == "__main__":
    run()
