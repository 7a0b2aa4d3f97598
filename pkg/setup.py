import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the compiled kernel if possible, fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping compiled kernel ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc}); "
                  "the pure-Python fallback will be used")


ext_modules = []
if not os.environ.get("FGZETA_NO_EXT"):
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            [Extension("fgzeta._speedups", ["src/fgzeta/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; building without the compiled kernel")

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": optional_build_ext},
)
