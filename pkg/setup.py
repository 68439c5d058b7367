"""A setup tools configuration to be used for building and distribution."""

import setuptools
import os

# Information Configuration Goes Here
author = "conformal-domains developers"
classifiers = ["Development Status :: 4 - Beta",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: MIT License",
               "Natural Language :: English",
               "Operating System :: MacOS",
               "Operating System :: Microsoft",
               "Operating System :: Unix",
               "Programming Language :: Python :: 3",
               "Programming Language :: Python :: 3 :: Only",
               "Programming Language :: Python :: Implementation :: CPython",
               "Topic :: Scientific/Engineering :: Mathematics",
               "Topic :: Scientific/Engineering :: Physics"]
description = "Half-space charts, geodesics and O(4,2) actions on the compactified Minkowski domains Sigma+-"
# Specifies installation library dependencies
install_requirements = [
    "beautifulsoup4>=4.5.1",
    "click>=7.0",
    "humanfriendly>=4.18",
    "jinja2>=2.10",
    "lxml>=4.2",
    "Markdown>=3.0",
    "numpy>=1.17",
]
keywords = ["Conformal compactification",
            "Minkowski space",
            "O(4,2)",
            "Geodesics",
            "Half-space model"]
license = "MIT"
long_description = ("conformal-domains embeds Minkowski space into the null cone"
                    " of R^{4,2}, gives the domains Sigma+- half-space"
                    " coordinates with their induced metrics, integrates and"
                    " classifies their geodesics, and acts on everything with"
                    " the conformal group O(4,2). Every identity ships as a"
                    " seeded property suite behind `conformal-domains verify`.")
name = "conformal-domains"
package_data = {
    "conformal_domains": [
        "version/VERSION.txt",  # Includes the VERSION file
        "checks/*.py",          # Includes the property suites, loaded by path
        "templates/*",          # Includes the SVG figure template
    ]
}
platforms = ["MacOS",
             "Microsoft",
             "Unix"]

version_namespace = {}
with open(os.path.join(os.path.dirname(os.path.realpath(__file__)),
                       "conformal_domains", "version", "version.py")) as version_module:
    exec(version_module.read(), version_namespace)
__version__ = version_namespace["get_version"](os.path.join(os.path.dirname(os.path.realpath(__file__)),
                                                             'conformal_domains', 'version'))

# now we have an `__version__` variable

# Setup tools configuration goes here
setuptools.setup(
    author=author,
    classifiers=classifiers,
    description=description,
    install_requires=install_requirements,
    keywords=keywords,
    license=license,
    long_description=long_description,
    name=name,
    packages=setuptools.find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
    package_data=package_data,
    platforms=platforms,
    python_requires=">=3.7",
    entry_points={
        'console_scripts': [
            'conformal-domains=conformal_domains.main:execute',
        ],
    },
    version=__version__
)
