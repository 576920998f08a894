"""Test suite for exturan."""
