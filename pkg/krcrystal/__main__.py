import sys

from krcrystal.cli import main

sys.exit(main())
