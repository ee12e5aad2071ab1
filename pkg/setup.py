from setuptools import setup, find_packages

version = 0, 1, "dev"
ver = "{}.{}.{}".format(*version)
with open("README.txt", encoding="utf8") as f: readme = f.read()

setup(
    # Package info
    name = "liftmod",
    version = ver,
    license = "GPLv3",
    packages = find_packages(exclude=["tests"]),
    package_data = {"liftmod": ["data/*.txt"]},

    # Dependencies
    python_requires = ">=3.8, <4",
    install_requires = ["numpy>=1.20", "sympy>=1.13", "tqdm>=4.40"],
    extras_require = {"test": ["pytest>=6", "hypothesis>=6"]},

    # Command line
    entry_points = {"console_scripts": ["liftmod = liftmod.cli:main"]},

    # Details
    description = "Liftable mapping classes of the twice-punctured torus: homology representation, generating sets and finite quotients",
    long_description = readme,

    # Additional data
    keywords = "mapping class group Dehn twist branched cover homology representation SL2",
    classifiers = [
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics"
    ]
)
