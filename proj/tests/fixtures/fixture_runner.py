#!/usr/bin/env python3
# Copyright 2026 The Mutascope Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Minimal runner used by the test suite. Speaks the runner protocol over
unittest-style classes in test_*.py files of the current directory."""

import ast
import importlib
import json
import os
import sys
import time
import unittest

sys.dont_write_bytecode = True


def collect():
    ids = []
    for name in sorted(os.listdir(".")):
        if not (name.startswith("test_") and name.endswith(".py")):
            continue
        with open(name, encoding="utf-8") as f:
            tree = ast.parse(f.read(), name)
        for node in tree.body:
            if not isinstance(node, ast.ClassDef):
                continue
            for item in node.body:
                if isinstance(item, ast.FunctionDef) and item.name.startswith("test"):
                    ids.append(f"{name}::{node.name}::{item.name}")
    return ids


def run(test_id, want_coverage):
    path, cls_name, method = test_id.split("::")
    sys.path.insert(0, os.getcwd())
    module = importlib.import_module(path[:-3])
    case = getattr(module, cls_name)(method)
    root = os.getcwd()
    covered = {}

    def tracer(frame, event, arg):
        filename = frame.f_code.co_filename
        if not filename.startswith(root):
            return None
        rel = os.path.relpath(filename, root)
        if os.path.basename(rel).startswith("test_"):
            return None
        if event == "line":
            covered.setdefault(rel, set()).add(frame.f_lineno)
        return tracer

    outcome = "PASS"
    start = time.monotonic()
    if want_coverage:
        sys.settrace(tracer)
    try:
        case.setUp()
        getattr(case, method)()
        case.tearDown()
    except AssertionError:
        outcome = "FAIL"
    except Exception:  # noqa: BLE001
        outcome = "ERROR"
    finally:
        sys.settrace(None)
    duration = int((time.monotonic() - start) * 1000)
    msg = {"type": "result", "id": test_id, "outcome": outcome, "duration_ms": duration}
    if want_coverage:
        msg["covered"] = {k: sorted(v) for k, v in sorted(covered.items())}
    print(json.dumps(msg))


def main(argv):
    if argv[1:] == ["collect"]:
        for test_id in collect():
            print(json.dumps({"type": "test", "id": test_id}))
        return 0
    if len(argv) == 4 and argv[1] in ("baseline", "run") and argv[2] == "--test":
        run(argv[3], argv[1] == "baseline")
        return 0
    print("usage: fixture_runner.py collect | baseline|run --test ID", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv))
