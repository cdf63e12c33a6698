"""Measured laminations on small surfaces via Dehn-Thurston coordinates."""

__version__ = "0.1.0"
