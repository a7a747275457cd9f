"""Configuration management for wcol-turbo."""
from src.config.settings import Settings, settings

__all__ = ["settings", "Settings"]
