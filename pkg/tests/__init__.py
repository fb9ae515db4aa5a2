"""Tests for stylesteg"""
