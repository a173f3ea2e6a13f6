#!/usr/bin/env python3
"""
fqt-domain
Reduce boundary triples of the Bruhat-Tits tree of F_q((1/t)) into the strong
fundamental domain of PGL_2(F_q[t]), walk the tree and run the flow on the quotient.
"""

import sys

from dotenv import load_dotenv, find_dotenv  # type: ignore

from src.cli.commands import run

# Load FQT_* settings from a .env file if present
load_dotenv(find_dotenv())


def main():
    """Main entry point for the application"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
