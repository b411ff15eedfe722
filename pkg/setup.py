"""
mgeo
mgeo: Birkhoff-James orthogonality and the geometry of finite-dimensional real normed spaces
"""
import sys
from setuptools import find_packages, setup

if sys.version_info.major < 3:
    raise ValueError("Due to abstract classes used. mgeo must be run using python 3.")

short_description = __doc__.split("\n")

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except OSError:
    long_description = "\n".join(short_description[2:])

version = {}
with open("mgeo/_version.py", "r") as handle:
    exec(handle.read(), version)

setup(
    # Self-descriptive entries which should always be present
    name='mgeo',
    description=short_description[2],
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version["__version__"],
    license='BSD-3-Clause',

    # Which Python importable modules should be included when your package is installed
    packages=find_packages(),

    # Optional include package data to ship with your package
    # Customize MANIFEST.in if the general case does not suit your needs
    include_package_data=True,
    package_data={'mgeo': ['examples/*.json']},

    # Allows `setup.py test` to work correctly with pytest
    setup_requires=["numpy", "scipy"] + pytest_runner,
    extras_require={'extra': ['pytest', 'pytest-cov']},

    install_requires=["numpy", "scipy", "numba"],
    python_requires=">=3.7",
    entry_points={'console_scripts': ['mgeo = mgeo.main:console_main']},

    # Manual control if final package is compressible or not, set False to prevent the .egg from being made
    zip_safe=False,

)
