"""Allow ``python -m domenum``."""

from domenum.main import main

main()
