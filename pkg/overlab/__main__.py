import sys

from .errors import ConfigurationError

try:
    from .cli import main
except ConfigurationError as e:
    # settings are read at import
    print(f"[ERROR] invalid settings: {e}", file=sys.stderr)
    sys.exit(2)

sys.exit(main())
