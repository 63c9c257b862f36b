"""collabsim - Human-AI collaboration production model simulator."""

__version__ = "0.1.0"
