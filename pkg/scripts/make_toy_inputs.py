#!/usr/bin/env python3
"""Write the crunch/chew/eat demo inputs plus a ready-to-run config.

Usage: python scripts/make_toy_inputs.py [DIR]
Then:  evgraph build --config DIR/config.txt
"""

import sys
from pathlib import Path

from evgraph.synth import write_config_file, write_toy_inputs


def main() -> int:
    directory = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("toy")
    paths = write_toy_inputs(directory)
    write_config_file(
        directory / "config.txt",
        {
            "corpus": paths["corpus"].name,
            "taxonomy": paths["taxonomy"].name,
            "verb_hierarchy": paths["verb_hierarchy"].name,
            "output_dir": "out",
        },
    )
    print(f"toy inputs in {directory}/ (config: {directory / 'config.txt'})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
