"""Test package for witten_g2."""
