"""
Test utilities package.
"""

