"""
Test suite of mgeo. ``oracle`` holds the brute-force references the tests compare against.
"""
