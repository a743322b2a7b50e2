from setuptools import setup, find_packages

setup(
    name="dirflag",
    version="0.1.0",
    description="Directed flag complexes, path homology, digraph homotopy and persistence",
    packages=find_packages(),
    python_requires=">=3.9",
    install_requires=["numpy>=1.22", "scipy>=1.8", "pandas>=1.4", "networkx>=2.8"],
    extras_require={"test": ["pytest>=7"]},
    entry_points={"console_scripts": ["dirflag = dirflag.main:main"]},
)
