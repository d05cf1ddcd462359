import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HILBEXC_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("hilbexc._kernels", ["src/hilbexc/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
