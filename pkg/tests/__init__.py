"""Test package for Zeta Compass."""
