import sys

from intarcs.cli import main

sys.exit(main())
