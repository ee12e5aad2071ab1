import sys
from liftmod.cli import main

sys.exit(main())
