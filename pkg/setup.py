import setuptools
from pathlib import Path

with open("README.md", "r") as fh:
    long_description = fh.read()

version_file = Path(__file__).parent/"quantum_schubert"/"VERSION"
VERSION = version_file.open('r').read().strip()

setuptools.setup(
        name="quantum_schubert",
        version=VERSION,
        description="Exact quantum Schubert calculus on Grassmannians, with the root-system bookkeeping behind it",
        long_description=long_description,
        long_description_content_type="text/markdown",
        packages=setuptools.find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
        include_package_data=True,
        package_data={"quantum_schubert": ["VERSION"]},
        python_requires=">=3.8",
        classifiers=[
            "Programming Language :: Python :: 3.8",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        install_requires=[
            'numpy',
            'sympy',
            'pyyaml',
            'tabulate',
        ],
        entry_points={
            "console_scripts": ["qsc=quantum_schubert.cli:main"],
        },
)
