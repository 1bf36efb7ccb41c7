from setuptools import find_packages, setup

setup(
    name="dwsynth",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "numpy",
        "torch",
        "torchtyping",
        "einops",
        "gymnasium",
        "pyparsing>=3.0",
        "simple-parsing>=0.1",
        "tqdm",
    ],
    entry_points={"console_scripts": ["dwsynth=dwsynth.cli:main"]},
)
