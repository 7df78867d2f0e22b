"""Tests for ITO Server."""
