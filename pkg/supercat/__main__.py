import sys

from supercat.cli import main

sys.exit(main())
