"""
Compiling tables
================

Tables over a box of arguments, rendered as text, CSV or JSON, with an
optional JSON cache keyed by the sorted, zero-free spec.
The same workflow is available from the shell::

    evengillis table 4 4 4 --method all --cache d3.json
"""

import json
import os
import tempfile

from evengillis.tables import TableCache, TableRequest, build_table, render

print(render(build_table(TableRequest((3, 3, 3), method="all"))))

# JSON stores counts as decimal strings; they outgrow 53-bit floats fast.
doc = json.loads(render(build_table(TableRequest((20,), format="json"))))
print("D(20) =", doc["cells"][-1]["value"])

cache = TableCache()
request = TableRequest((5, 5, 5), format="csv")
first = render(build_table(request, cache=cache))
path = os.path.join(tempfile.mkdtemp(), "cache.json")
cache.save(path)
print(f"{len(cache.entries)} canonical entries cached for {6 ** 3} cells")

again = render(build_table(request, cache=TableCache.load(path)))
assert again == first
