import sys

from matchstick.cli import main

sys.exit(main())
