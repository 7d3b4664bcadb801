import io
import os
from setuptools import setup, find_packages

# Package meta-data.
NAME = 'rydcalc'
DESCRIPTION = 'Exact Schubert structure constants of adjoint and coadjoint varieties'
URL = ''
EMAIL = ''
AUTHOR = 'rydcalc contributors'
REQUIRES_PYTHON = '>=3.8.0'
VERSION = "0.1.0"

# What packages are required for this module to be executed?
REQUIRED = [
    "numpy>=1.18.1", "pandas", "scipy", "sympy>=1.7"]

# What packages are optional?
EXTRAS = {
    "test": ["pytest"]
    }

here = os.path.abspath(os.path.dirname(__file__))

# Import the README and use it as the long-description.
# Note: this will only work if 'README.md' is present in your MANIFEST.in file!
try:
    with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
        long_description = '\n' + f.read()
except FileNotFoundError:
    long_description = DESCRIPTION


CLASSIFIERS = """\
Development Status :: 3 - Alpha
Intended Audience :: Science/Research
Intended Audience :: Developers
License :: OSI Approved
Programming Language :: Python
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
Operating System :: Unix
"""


# Where the magic happens:
setup(
    name=NAME,
    version=VERSION,
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type='text/markdown',
    author=AUTHOR,
    author_email=EMAIL,
    python_requires=REQUIRES_PYTHON,
    url=URL,
    packages=find_packages(),
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    include_package_data=True,
    package_data={'rydcalc': ['tests/golden/*.json']},
    entry_points={
        'console_scripts': ['rydcalc=rydcalc.cli:main'],
    },
    license='',
    keywords=[
        'schubert calculus', 'structure constants', 'adjoint varieties'
    ],
    classifiers=[_f for _f in CLASSIFIERS.split("\n") if _f]
)
