import os

from setuptools import Extension, setup

# The compiled kernel is an accelerator, not a requirement: when Cython (or a
# C compiler) is unavailable the package falls back to the pure-Python kernel
# at import time.  Set CONDPROB_NO_EXT=1 to skip the extension build.
ext_modules = []
if os.environ.get("CONDPROB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "condprob._betakernel",
                    ["src/condprob/_betakernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
