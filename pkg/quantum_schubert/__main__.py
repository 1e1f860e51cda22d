import sys

from quantum_schubert.cli import main

sys.exit(main())
