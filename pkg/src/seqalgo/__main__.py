import sys

from seqalgo.cli import main

sys.exit(main())
