import warnings

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fqbinom._kernel._fastpoly",
                ["src/fqbinom/_kernel/_fastpoly.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    warnings.warn("Cython not available; installing with the pure-Python kernel only")

setup(ext_modules=ext_modules)
