"""Configuration package for collabsim."""
from .settings import get_settings, clear_settings_cache

__all__ = ['get_settings', 'clear_settings_cache']
