"""
Parity Groups Verifier - command-line entry point

Usage: python main.py <verb> <action> [options]
       python main.py verify all --max-n 4
"""
from cli.main import main


if __name__ == "__main__":
    main()
