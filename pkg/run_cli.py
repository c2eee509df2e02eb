#!/usr/bin/env python3
"""Main entry point for the vhk command-line interface."""

from src.ui.cli import main

if __name__ == "__main__":
    main()
