"""Test package for AI Context Manager."""