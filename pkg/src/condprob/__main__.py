import sys

from condprob.cli import main

sys.exit(main())
