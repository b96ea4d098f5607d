import sys

from idrlab.cli import main

sys.exit(main())
