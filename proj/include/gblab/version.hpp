#ifndef GBLAB_VERSION_HPP
#define GBLAB_VERSION_HPP

#define GBLAB_VERSION "0.1.0"

#endif
