from setuptools import setup, find_packages
from os import path
from io import open

# Get current directory and long description from README
currentDir = path.abspath(path.dirname(__file__))

with open(path.join(currentDir, "README.md"), encoding="utf-8") as f:
    longDescription = f.read()

# the setup
setup(
    name="nodegames",
    version="0.1.0",
    description="Best response game dynamics on binomial random graphs",
    long_description=longDescription,
    long_description_content_type="text/markdown",
    author="Matt Buckley",
    python_requires=">=3.9",
    packages=find_packages(exclude=['contrib', 'docs', 'tests', 'examples']),
    install_requires=["numpy>=1.22", "pandas>=1.5", "scipy>=1.8", "tqdm>=4.60"],
    extras_require={
        "test": ["pytest>=7.0", "pytest-cov>=3.0", "hypothesis>=6.0", "networkx>=2.8"],
        "docs": ["Sphinx>=5.0", "sphinx-rtd-theme>=1.0", "numpydoc>=1.4"],
    },
    entry_points={
        "console_scripts": ["nodegames=nodegames.cli.command_line:main"],
    },
)
