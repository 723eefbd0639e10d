"""
Configuration module for the parity groups verifier
Provides centralized settings management using Pydantic BaseSettings
"""

from .settings import settings, get_settings, apply_overrides, reset_settings, Settings

__all__ = ["settings", "get_settings", "apply_overrides", "reset_settings", "Settings"]
