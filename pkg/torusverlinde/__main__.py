from __future__ import annotations

from torusverlinde.tools.lib.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
