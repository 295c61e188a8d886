# Copyright 2026 The cftk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python access to the cftk kernel through its command surface."""

import json

from ._cftk import DomainError, diamond_witness, factor_rational, run

__all__ = ["CommandError", "DomainError", "call", "diamond_witness", "factor_rational", "run"]


class CommandError(RuntimeError):
    """A command exited with a nonzero status."""

    def __init__(self, code, payload):
        self.code = code
        self.payload = payload
        super().__init__(payload.get("message", f"exit status {code}"))

    @property
    def kind(self):
        return self.payload.get("error")


def call(*args, **options):
    """Run a subcommand and return its decoded JSON.

    Keyword options become flags: ``max_degree=30`` is passed as
    ``--max-degree 30``, ``closure=True`` as ``--closure``. Lists are joined
    with commas and dicts are encoded as JSON.
    """
    argv = [str(a) for a in args]
    for key, value in options.items():
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        elif isinstance(value, dict):
            argv += [flag, json.dumps(value)]
        elif isinstance(value, (list, tuple)):
            argv += [flag, ",".join(str(v) for v in value)]
        else:
            argv += [flag, str(value)]
    code, text = run(argv)
    payload = json.loads(text)
    if code != 0:
        raise CommandError(code, payload)
    return payload
