import os

from setuptools import setup

# The compiled kernels are optional: if Cython or a C compiler is missing
# (or CLIQUELAB_PURE=1 is set) the package installs anyway and falls back
# to the pure-Python kernels at import time.
ext_modules = []
if os.environ.get("CLIQUELAB_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "cliquelab._ckernels",
                    ["src/cliquelab/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
