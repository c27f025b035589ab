import sys

from qappell.main import main

sys.exit(main())
