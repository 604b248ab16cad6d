"""Serve the demo dataset for browser annotation.

Starts the annotation API (plus the web UI if frontend/dist has been built)
on localhost and blocks until Ctrl-C.  The same thing is available as
`duckmorph annotate --data demos/demo_data --serve 127.0.0.1:8600`.
"""

from pathlib import Path

from _common import demo_dataset

from duckmorph.server import make_server

ADDR = "127.0.0.1:8600"


def main() -> None:
    manifest = demo_dataset()
    ui = Path(__file__).resolve().parents[1] / "frontend" / "dist"
    server = make_server(manifest, ADDR, ui_dir=ui if ui.is_dir() else None)
    print(f"serving {len(manifest.samples)} clouds on http://{ADDR}/")
    print("GET /api/clouds lists them; Ctrl-C stops the server")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        print("\nstopping")
    finally:
        server.server_close()


if __name__ == "__main__":
    main()
