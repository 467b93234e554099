"""
* Software Name : DrawdownDividends
* Software description: DrawdownDividends computes optimal dividend payments for a surplus process that is penalised while its drawdown exceeds a critical level: 1) Model: characteristic exponents, critical dividend weight and regime classification. 2) Solver: exact piecewise value function and payment thresholds, with HJB residual and structural checks. 3) Simulator: Monte Carlo estimates of strategy values for cross-validation against the solver.
* Version: <1.0.0>
* SPDX-License-Identifier: GPL-3.0-or-later
* Licensed under the GNU-GPL v3 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.gnu.org/licenses/gpl-3.0.html#license-text
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
"""
import collections
import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class RunManifest(collections.namedtuple("RunManifest", ("command", "parameters", "version", "seed", "outputs",
                                                         "wall_seconds"))):
    """ What a command was run with and what it wrote, enough to run it again. """

    def to_dict(self) -> dict:
        return {"command": self.command,
                "parameters": self.parameters,
                "version": self.version,
                "seed": self.seed,
                "outputs": [str(output) for output in self.outputs],
                "wall_seconds": self.wall_seconds}


def append_manifest(out_dir: Path, manifest: RunManifest) -> Path:
    path = Path(out_dir) / MANIFEST_NAME
    entries = json.loads(path.read_text(encoding="utf-8")) if path.exists() else []
    entries.append(manifest.to_dict())
    path.write_text(json.dumps(entries, indent=2), encoding="utf-8")
    logger.debug(f"manifest entry for {manifest.command} appended to {path}")
    return path
