#ifndef M21_VERSION_HPP
#define M21_VERSION_HPP

#define M21_VERSION "1.0.0"

#endif
