"""Build script: compiles the optional orbit kernel.

The package is pure Python except for one hot loop (double-precision orbit
averaging).  If Cython or a C compiler is unavailable the build still
succeeds and the package falls back to the Python implementation at import.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler: fall back to pure Python
            print(f"warning: skipping extension build ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("fareycf._fastorbit", ["src/fareycf/_fastorbit.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
