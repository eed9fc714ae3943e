import sys

from iocodes.cli import main

sys.exit(main())
