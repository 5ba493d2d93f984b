"""CLI module for hyproj."""
