# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

from setuptools import setup, find_packages


with open("requirements.txt") as requirements_file:
    requirements = [line.strip() for line in requirements_file if line.strip() and not line.startswith("pytest")]

setup(
    name="nevlab",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    package_data={"nevlab": ["validation_schemas/*.json"]},
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "nevlab = nevlab.cli:cli"
        ]
    }
)
