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
from setuptools import setup, find_packages

setup(
    name='DrawdownDividends',
    version='1.0',
    description='Optimal dividends under a drawdown penalty: exact value function and Monte Carlo validation',
    license='GPL-3.0-or-later',
    packages=find_packages(include=['model', 'model.*', 'solver', 'solver.*', 'simulator', 'simulator.*',
                                    'cli', 'cli.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.22.0',
        'scipy>=1.7.3',
        'pandas>=1.4.0',
        'pydantic>=2.5.2',
        'typing-extensions>=4.6.1',
        'tqdm>=4.60.0',
    ],
    extras_require={
        'tests': ['pytest>=7.0'],
    },
    entry_points={
        'console_scripts': ['drawdown-dividends=cli.drawdown_cli:main'],
    },
)
