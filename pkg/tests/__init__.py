"""Test package for collabsim."""
