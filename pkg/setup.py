"""Build script: compiles the Cython kernel extension when possible.

The extension is optional. If Cython or a C compiler is missing, the build
falls back to the pure-Python kernels and the package still works; the
backend is selected at import time in ringlat._kernels.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            warnings.warn(f"C kernel build failed ({exc}); using pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"C kernel build failed ({exc}); using pure-Python kernels")


try:
    from Cython.Build import cythonize
except ImportError:
    warnings.warn("Cython not found; building without the compiled kernels")
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ringlat._kernels._speedups",
                ["src/ringlat/_kernels/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
