import sys

from zdlab.cli import main

sys.exit(main())
