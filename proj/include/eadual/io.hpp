#ifndef EADUAL_IO_HPP
#define EADUAL_IO_HPP
#endif
