"""Optional compiled kernels.  `pip install .` works without Cython; with it,
the elimination twin strata.kernel._elim_cy is built and preferred at import.
Build in place with:  python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "strata.kernel._elim_cy",
                ["src/strata/kernel/_elim_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
