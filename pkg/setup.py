from setuptools import setup, find_packages

setup(
    name="MHSKit",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "numpy>=1.20.0",
        "pandas>=1.3.0",
        "pydantic>=2.0.0",
        "sympy>=1.10",
        "fpylll>=0.6.0",
    ],
    extras_require={
        "dev": [
            "pytest>=6.2.0",
            "pytest-cov>=2.12.0",
            "hypothesis>=6.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "mhskit=mhskit.main:main",
        ],
    },
    description="Exact computations with graded-polarized mixed Hodge structures and their period domains",
    keywords="mixed hodge structures, period domains, nilpotent orbits, exact linear algebra",
    python_requires=">=3.9",
)
