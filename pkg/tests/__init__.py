"""
Test package cho toolkit qbec.
"""
