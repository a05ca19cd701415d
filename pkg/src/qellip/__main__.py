import sys

from qellip.cli import main

sys.exit(main())
