#!/usr/bin/env python
# -*- encoding: utf-8 -*-
# flake8: noqa
from __future__ import absolute_import
from __future__ import print_function

import io
from os import path

from setuptools import setup


here = path.abspath(path.dirname(__file__))


def read(*names, **kwargs):
    return io.open(
        path.join(here, *names),
        encoding=kwargs.get("encoding", "utf8")
    ).read()


long_description = read("README.md")
requirements = [line for line in read("requirements.txt").split("\n") if line.strip()]
optional_requirements = {}

setup(
    name="compas_fdcrack",
    version="0.1.0",
    description="Fictitious domain finite elements for pressurized cracks in linear elastic media",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/compas-dev/compas_fdcrack",
    author="tom van mele",
    author_email="van.mele@arch.ethz.ch",
    license="MIT license",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering",
        "License :: OSI Approved :: MIT License",
        "Operating System :: Unix",
        "Operating System :: POSIX",
        "Operating System :: Microsoft :: Windows",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
    ],
    keywords=["finite elements", "fictitious domain", "crack", "level set"],
    project_urls={},
    packages=[
        "compas_fdcrack",
        "compas_fdcrack.app",
        "compas_fdcrack.assembly",
        "compas_fdcrack.extension3d",
        "compas_fdcrack.geometry",
        "compas_fdcrack.mesh",
        "compas_fdcrack.postproc",
        "compas_fdcrack.solvers",
        "compas_fdcrack.spaces",
    ],
    package_dir={"": "src"},
    package_data={"compas_fdcrack.app": ["config.json"]},
    data_files=[],
    include_package_data=True,
    zip_safe=False,
    install_requires=requirements,
    python_requires=">=3.8",
    extras_require=optional_requirements,
    entry_points={
        "console_scripts": [
            "fdcrack = compas_fdcrack.app.cli:main",
        ],
    },
    ext_modules=[],
)
