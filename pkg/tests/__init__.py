"""Unit test package for pyndisc."""
