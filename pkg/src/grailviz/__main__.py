import sys

from grailviz.cli import main

sys.exit(main())
