from setuptools import setup


setup(
    name="ose-solver",
    version="0.1.0",
    description="Equilibrium solver for the open/close component-supply pricing game",
    py_modules=[
        "data_models",
        "demand",
        "encoding",
        "follower",
        "global_params",
        "leader",
        "main",
        "oracle",
        "scenario",
        "strategy",
        "zone_schema",
    ],
    install_requires=[
        "numpy",
        "scipy",
        # zone CSV output and readout/zone_summary.py
        "pandas",
    ],
    extras_require={
        # Dev dependencies: run tests with pip install -e ".[dev]" then pytest tests
        "dev": ["pytest"],
    },
    entry_points={
        "console_scripts": [
            "ose=main:main",
        ],
    },
    python_requires=">=3.8",
)
