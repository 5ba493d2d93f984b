"""Tests for hyproj."""
