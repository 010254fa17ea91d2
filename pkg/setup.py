from setuptools import setup, find_packages

try:
    with open("README.md") as f:
        long_description = f.read()
except FileNotFoundError:
    long_description = "<README.md not found>"


def _get_version():
    try:
        with open("VERSION") as vfp:
            return vfp.read().strip()
    except FileNotFoundError:
        return "Unknown"


setup(
    name="qratio",
    version=_get_version(),
    packages=find_packages(exclude=["tests", "tests.*"]),
    description="Exact real-root bounds for real polynomials from their coefficient ratios, checked by a Sturm oracle.",
    long_description=long_description,
    python_requires=">=3.11",
    install_requires=["colorama>=0.4.6", "psutil", "mpmath", "numpy", "sympy"],
    extras_require={
        "Tests": ["hypothesis", "pytest"],
    },
    entry_points={"console_scripts": ["qratio=qratio.__main__:run"]},
)
