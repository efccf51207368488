import sys

from syzplane.cli import main

sys.exit(main())
