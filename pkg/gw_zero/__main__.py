import sys

from gw_zero.cli import main

sys.exit(main())
