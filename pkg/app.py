#!/usr/bin/env python3
"""
This script is the entrypoint for the cocharacter engine. It runs the same command line
as the installed `cochar` console script.
"""

import sys

from pi_cocharacters.cli import main

sys.exit(main())
