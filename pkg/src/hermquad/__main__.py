import sys

from hermquad.cli import main

sys.exit(main())
