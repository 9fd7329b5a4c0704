"""Canonical report rendering and the deterministic fan-out helper."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor


def render(doc: dict) -> str:
    """Byte-stable rendering: sorted keys, fixed layout, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write(doc: dict, out=None) -> str:
    text = render(doc)
    if out is None:
        print(text, end="")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def fanout(fn, items, jobs: int = 1) -> list:
    """Apply fn over items, optionally on a thread pool.

    Results come back in input order either way, so reports do not depend
    on the execution mode.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
