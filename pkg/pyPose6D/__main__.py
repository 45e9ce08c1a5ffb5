import sys

from pyPose6D.cli.main import main

sys.exit(main())
