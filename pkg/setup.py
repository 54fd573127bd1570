from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is optional: without Cython (or a C compiler) the
# package installs with the pure-Python fallback selected at import time.
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("ordsem._ckernel", ["src/ordsem/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
